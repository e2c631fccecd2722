#include <iostream>

int main() {
  std::cout << "chnorm\n";
  return 0;
}
