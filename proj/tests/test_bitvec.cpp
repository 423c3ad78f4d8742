#include <doctest.h>

#include <stdexcept>

#include "qca/bitvec.hpp"

using qca::BitMatrix;
using qca::BitVec;

TEST_SUITE_BEGIN("bitvec");

TEST_CASE("set, get, flip, and bounds") {
    BitVec v(70);  // crosses a word boundary
    CHECK(v.size() == 70);
    CHECK_FALSE(v.any());
    v.set(0, true);
    v.set(69, true);
    CHECK(v.get(0));
    CHECK(v.get(69));
    CHECK_FALSE(v.get(35));
    v.flip(35);
    CHECK(v.get(35));
    CHECK(v.popcount() == 3);
    v.set(35, false);
    CHECK(v.popcount() == 2);
    CHECK_THROWS_AS(v.set(70, true), std::out_of_range);
}

TEST_CASE("xor, dot, string round trip") {
    const BitVec a = BitVec::from_string("0110");
    const BitVec b = BitVec::from_string("0011");
    CHECK((a ^ b).to_string() == "0101");
    CHECK(BitVec::dot(a, b) == true);   // overlap at one position
    CHECK(BitVec::dot(a, a) == false);  // even overlap with itself
    CHECK(BitVec::ones(5).to_string() == "11111");
    CHECK(BitVec::unit(4, 2).to_string() == "0010");
    CHECK_THROWS_AS(BitVec::from_string("012"), std::invalid_argument);
    CHECK_THROWS_AS((void)BitVec::dot(a, BitVec(5)), std::invalid_argument);
}

TEST_CASE("matrix multiply and transpose") {
    // M = [[1,1],[0,1]] over GF(2).
    BitMatrix m(2, 2);
    m.set(0, 0, true);
    m.set(0, 1, true);
    m.set(1, 1, true);
    const BitVec v = BitVec::from_string("11");
    CHECK(m.mul(v).to_string() == "01");
    const BitMatrix m2 = m.mul(m);  // [[1,0],[0,1]] since 1+1=0
    CHECK(m2 == BitMatrix::identity(2));
    CHECK(m.transpose().get(1, 0) == true);
    CHECK(m.transpose().get(0, 1) == false);
}

TEST_CASE("identity behaves") {
    const BitMatrix id = BitMatrix::identity(17);
    BitVec v(17);
    v.set(3, true);
    v.set(16, true);
    CHECK(id.mul(v) == v);
    CHECK(id.mul(id) == id);
}

TEST_SUITE_END();
