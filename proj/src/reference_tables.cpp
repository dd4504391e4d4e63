#include "qlcd/reference_tables.hpp"

#include "qlcd/errors.hpp"

namespace qlcd {

namespace {

constexpr ReferenceCell kDim2Optimal[] = {
    {2, 1},  {3, 1},  {4, 1},  {5, 1},  {6, 1},  {7, 1},  {8, 1},  {9, 3},  {10, 2},
    {11, 2}, {12, 1}, {14, 4}, {15, 2}, {16, 2}, {19, 5}, {20, 2}, {24, 5},
};

constexpr ReferenceCell kDim2NearOptimal[] = {
    {4, 1},   {5, 1},   {6, 2},   {7, 2},   {8, 2},   {9, 2},   {10, 5},  {11, 3},  {12, 4},
    {13, 7},  {14, 7},  {15, 9},  {16, 5},  {17, 6},  {18, 12}, {19, 8},  {20, 11}, {21, 6},
    {22, 7},  {23, 16}, {24, 10}, {25, 13}, {26, 7},  {27, 8},  {28, 18}, {29, 11}, {30, 14},
    {31, 7},  {32, 8},  {33, 20}, {34, 12}, {35, 15}, {36, 7},  {38, 21}, {39, 12}, {40, 15},
    {43, 22}, {44, 12}, {48, 22},
};

constexpr ReferenceCell kDim3Optimal[] = {
    {4, 0},       {5, 0},      {6, 2},      {7, 1},      {8, 1},       {9, 1},      {10, 13},    {11, 13},
    {12, 2},      {13, 2},     {14, 156},   {15, 28},    {16, 10},     {17, 1},     {18, 1},     {19, 196},
    {20, 10},     {21, 5},     {22, 1871},  {23, 135},   {24, 73},     {25, 4},     {26, 1},     {27, 937},
    {28, 30},     {29, 18},    {30, 1},     {31, 589},   {32, 220},    {33, 7},     {34, 4},     {35, 3562},
    {36, 118},    {37, 39},    {38, 1},     {39, 1},     {40, 774},    {41, 23},    {42, 7},     {43, 9793},
    {44, 288},    {45, 138},   {46, 4},     {47, 1},     {48, 1948},   {49, 44},    {50, 23},    {51, 1},
    {52, 889},    {53, 309},   {54, 7},     {55, 4},     {56, 5398},   {57, 147},   {58, 44},    {59, 1},
    {60, 1},      {61, 930},   {62, 23},    {63, 7},     {64, 12405},  {65, 318},   {66, 147},   {67, 4},
    {68, 1},      {69, 2145},  {70, 44},    {71, 23},    {72, 1},      {73, 947},   {74, 318},   {75, 7},
    {76, 4},      {77, 5709},  {78, 147},   {79, 44},    {80, 1},      {82, 947},   {83, 23},    {84, 7},
    {85, 12781},  {86, 318},   {87, 147},   {88, 4},     {90, 2162},   {91, 44},    {92, 23},    {94, 947},
    {95, 318},    {96, 7},     {98, 5736},  {99, 147},   {100, 44},    {103, 947},  {104, 23},   {106, 12808},
    {107, 318},   {108, 147},  {111, 2162}, {112, 44},   {115, 947},   {116, 318},  {119, 5736}, {120, 147},
    {124, 947},   {127, 12808}, {128, 318}, {132, 2162}, {136, 947},   {140, 5736}, {148, 12808},
};

}  // namespace

std::string to_string(TableId t) {
  switch (t) {
    case TableId::Dim2Optimal: return "dim2-optimal";
    case TableId::Dim2NearOptimal: return "dim2-near-optimal";
    case TableId::Dim3Optimal: return "dim3-optimal";
  }
  return "unknown";
}

TableId parse_table_id(const std::string& name) {
  for (TableId t : {TableId::Dim2Optimal, TableId::Dim2NearOptimal, TableId::Dim3Optimal})
    if (to_string(t) == name) return t;
  throw DomainError("unknown table '" + name + "' (expected dim2-optimal, dim2-near-optimal or dim3-optimal)");
}

const TableSpec& reference_table(TableId t) {
  static const TableSpec dim2{TableId::Dim2Optimal, 2, false, kDim2Optimal};
  static const TableSpec dim2_near{TableId::Dim2NearOptimal, 2, true, kDim2NearOptimal};
  static const TableSpec dim3{TableId::Dim3Optimal, 3, false, kDim3Optimal};
  switch (t) {
    case TableId::Dim2Optimal: return dim2;
    case TableId::Dim2NearOptimal: return dim2_near;
    case TableId::Dim3Optimal: return dim3;
  }
  throw DomainError("unknown table");
}

const std::vector<VectorBlock>& reference_vector_blocks() {
  static const std::vector<VectorBlock> blocks{
      {32, 24, {{3, 8, 8, 8, 5}, {5, 8, 5, 6, 8}, {6, 8, 5, 7, 6}, {6, 8, 7, 4, 7},
                {6, 8, 8, 7, 3}, {7, 8, 4, 5, 8}, {8, 8, 2, 7, 7}, {8, 8, 8, 7, 1}}},
      {36, 27, {{6, 9, 7, 6, 8}, {6, 9, 9, 6, 6}, {8, 9, 3, 8, 8}, {8, 9, 8, 2, 9},
                {8, 9, 8, 4, 7}, {8, 9, 8, 5, 6}, {8, 9, 9, 6, 4}}},
      {40, 30, {{4, 10, 10, 7, 9}, {6, 10, 7, 9, 8},  {6, 10, 7, 10, 7}, {6, 10, 9, 10, 5}, {7, 10, 5, 8, 10},
                {8, 10, 7, 8, 7},  {8, 10, 9, 5, 8},  {8, 10, 9, 6, 7},  {9, 10, 9, 6, 6},  {9, 10, 9, 8, 4},
                {9, 10, 10, 2, 9}, {10, 10, 1, 9, 10}, {10, 10, 9, 3, 8}, {10, 10, 10, 5, 5}, {10, 10, 10, 7, 3}}},
      {44, 33, {{4, 11, 9, 10, 10}, {7, 11, 10, 8, 8}, {8, 11, 8, 8, 9},  {8, 11, 11, 6, 8},
                {9, 11, 6, 10, 8},  {10, 11, 10, 3, 10}, {10, 11, 10, 6, 7}, {10, 11, 8, 5, 10},
                {10, 11, 9, 8, 6},  {10, 11, 11, 10, 2}, {11, 11, 6, 10, 6}, {11, 11, 8, 10, 4}}},
      {48, 36, {{5, 12, 12, 11, 8}, {8, 12, 9, 8, 11},  {8, 12, 10, 11, 7}, {9, 12, 9, 12, 6},  {9, 12, 10, 9, 8},
                {9, 12, 10, 10, 7}, {9, 12, 11, 6, 10}, {10, 12, 6, 9, 11}, {10, 12, 11, 5, 10}, {11, 12, 1, 12, 12},
                {11, 12, 2, 11, 12}, {11, 12, 6, 8, 11}, {11, 12, 7, 10, 8}, {11, 12, 10, 12, 3}, {11, 12, 11, 4, 10},
                {12, 12, 3, 9, 12}, {12, 12, 4, 9, 11}, {12, 12, 5, 7, 12}, {12, 12, 6, 7, 11}, {12, 12, 7, 9, 8},
                {12, 12, 9, 10, 5}, {12, 12, 10, 7, 7}}},
  };
  return blocks;
}

}  // namespace qlcd
