// Writes the picture fixtures shipped in fixtures/.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "cubering/picture.hpp"
#include "cubering/shapes.hpp"

namespace fs = std::filesystem;
using namespace cubering;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <directory>\n";
    return 1;
  }
  const fs::path dir = argv[1];
  fs::create_directories(dir);
  const std::pair<const char*, Picture3D> fixtures[] = {
      {"single_voxel.txt", shapes::box(1, 1, 1)},
      {"block_3.txt", shapes::box(3, 3, 3)},
      {"block_5.txt", shapes::box(5, 5, 5)},
      {"box_minus_center.txt", shapes::box_minus_center(3)},
      {"solid_torus.txt", shapes::solid_torus()},
      {"linked_rings.txt", shapes::linked_rings()},
      {"unlinked_rings.txt", shapes::unlinked_rings()},
      {"ring_chain_3.txt", shapes::ring_chain(3)},
  };
  for (const auto& [name, picture] : fixtures) {
    std::ofstream(dir / name, std::ios::binary) << serialize_picture(picture);
    std::cout << (dir / name).string() << '\n';
  }
  return 0;
}
