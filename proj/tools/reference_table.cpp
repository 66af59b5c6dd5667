#include "cli.hpp"

namespace specht::cli {

const std::vector<ReferenceRow>& reference_table() {
  static const std::vector<ReferenceRow> rows = {
      {4, "2,2", "-[Φ2]-> 1 -[Φ3]-> 1"},
      {5, "3,2", "-[1]-> 1 -[Φ3]-> 3 -[Φ4]-> 1"},
      {6, "4,2", "-[1]-> 4 -[Φ4]-> 1 -[Φ2]-> 3 -[Φ5]-> 1"},
      {6, "3,3", "-[Φ2]-> 1 -[Φ3]-> 3 -[Φ4]-> 1"},
      {6, "3,2,1", "-[1]-> 4 -[Φ3]-> 4 -[Φ5]-> 4 -[Φ3]-> 4"},
      {7, "5,2", "-[1]-> 8 -[Φ5]-> 5 -[Φ3Φ6]-> 1"},
      {7, "4,3", "-[1]-> 1 -[Φ3]-> 7 -[Φ4]-> 5 -[Φ5]-> 1"},
      {7, "3,3,1", "-[Φ2]-> 6 -[Φ3]-> 2 -[Φ5]-> 12 -[Φ4]-> 1"},
      {8, "6,2", "-[1]-> 13 -[Φ3Φ6]-> 1 -[Φ2]-> 5 -[Φ7]-> 1"},
      {8, "5,3", "-[1]-> 8 -[Φ4]-> 6 -[Φ2]-> 7 -[Φ5]-> 6 -[Φ6]-> 1"},
      {8, "4,4", "-[Φ2]-> 1 -[Φ3]-> 7 -[Φ4]-> 5 -[Φ5]-> 1"},
      {9, "7,2", "-[1]-> 19 -[Φ7]-> 7 -[Φ4Φ8]-> 1"},
      {9, "6,3", "-[1]-> 21 -[Φ5]-> 19 -[Φ6]-> 1 -[Φ3]-> 6 -[Φ7]-> 1"},
      {9, "5,4", "-[1]-> 1 -[Φ3]-> 15 -[Φ4]-> 18 -[Φ5]-> 7 -[Φ6]-> 1"},
  };
  return rows;
}

}  // namespace specht::cli
