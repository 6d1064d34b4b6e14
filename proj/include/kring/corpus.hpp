#ifndef KRING_CORPUS_HPP
#define KRING_CORPUS_HPP

#include "kring/charpair.hpp"
#include "kring/fan.hpp"

#include <string>
#include <variant>
#include <vector>

namespace kring::corpus {

Fan projective_space(int n);  // P^n: rays e_1..e_n and -(e_1+..+e_n)
Fan p1_power(int k);          // (P^1)^k: rays +-e_i, 2^k orthant cones
Fan hirzebruch(int a);        // rays (1,0),(0,1),(-1,a),(0,-1)
Fan blowup_p2(int points);    // P^2 blown up at 1..3 torus-fixed points

Fan halfplane();  // incomplete: support is the closed upper half plane
Fan singular();   // complete but one cone has determinant 2

CharPair square_quasitoric();   // the quasitoric square, not a fan
CharPair square_nonstandard();  // same square with an imprimitive label
CharPair p2_nerve();            // hand-written equivalent of the P^2 fan

struct Entry {
  std::string name;
  std::string file;  // bundled JSON filename under corpus/
  std::string kind;  // "fan" or "charpair"
  bool positive;     // expected to pass full verification
  int chi;           // expected K-ring rank for positive entries
  std::string note;
  std::variant<Fan, CharPair> data;
};

const std::vector<Entry>& entries();

}  // namespace kring::corpus

#endif
