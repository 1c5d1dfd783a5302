#include <cassert>
#include <iostream>

#include "smith/cfun.hpp"
#include "smith/hecke.hpp"

using namespace smith;

int main() {
  auto tri = share(Complex::from_maximal({{"a", "b", "c"}}));
  assert(tri->size() == 7);
  auto f = CFun::constant(tri, Ring::integers(), 1);
  assert(euler_integral(f).value == 1);
  auto hollow = share(Complex::from_maximal({{"a", "b"}, {"b", "c"}, {"c", "a"}}));
  assert(hollow->size() == 6);
  assert(euler_integral(CFun::constant(hollow, Ring::integers(), 1)).value == 0);
  std::cout << "smoke ok\n";
  return 0;
}
