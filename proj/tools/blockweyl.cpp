/*
  This is blockweyl.cpp — command-line front end (placeholder).
*/

#include <iostream>

int main()
{
  std::cerr << "blockweyl: not yet wired up\n";
  return 2;
}
