#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "addcomb/gset.hpp"
#include "oracles.hpp"

namespace testing_support {

inline addcomb::GSet cyc(std::int64_t n, std::initializer_list<addcomb::Code> codes) {
  return addcomb::GSet(addcomb::GroupSpec::cyclic(n), codes);
}

inline addcomb::GSet cyc(std::int64_t n, const oracle::Vec& codes) {
  return addcomb::GSet(addcomb::GroupSpec::cyclic(n), std::vector<addcomb::Code>(codes.begin(), codes.end()));
}

inline addcomb::GSet win(std::initializer_list<addcomb::Code> codes, std::int64_t lo = 0, std::int64_t hi = 10) {
  return addcomb::GSet(addcomb::GroupSpec::window(lo, hi), codes);
}

inline oracle::Vec vec(const addcomb::GSet& s) { return oracle::Vec(s.begin(), s.end()); }

}  // namespace testing_support
