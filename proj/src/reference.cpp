#include "kfg/reference.hpp"

#include <stdexcept>

namespace kfg {
namespace ref {

BaseSpec minimal_base(std::string_view type) {
  if (type == "GE") return {4, {{0}, {1, 2}, {0, 1, 2, 3}}};
  if (type == "KD") return {5, {{0}, {1}, {0, 1, 2}, {3, 4}}};
  if (type == "ED") return {3, {{0, 1}, {0, 1, 2}}};
  if (type == "OU") return {3, {{0}, {1}, {0, 1, 2}}};
  if (type == "EO") return {2, {{0}, {0, 1}}};
  if (type == "P") return {2, {{0, 1}}};
  if (type == "D") return {1, {{0}}};
  throw std::runtime_error("unknown space type: " + std::string(type));
}

BaseSpec named_base(std::string_view which) {
  if (which == "P-noni") return {3, {{0}, {1, 2}}};
  if (which == "D2") return {2, {{0}, {1}}};
  if (which == "ED-no-fb-id") return {4, {{0, 1}, {0, 1, 2, 3}}};
  if (which == "EO-no-fb-id") return {3, {{0}, {0, 1}, {0, 1, 2}}};
  if (which == "OU-split") return {4, {{0}, {1}, {0, 1, 2, 3}}};
  if (which == "KD-split")
    return {6, {{0}, {1}, {0, 2}, {0, 1, 2, 3}, {4, 5}}};
  if (which == "sharp-increment")
    return {5, {{0}, {0, 1}, {2, 3}, {0, 2, 3, 4}}};
  if (which == "all-phi-10")
    return {10, {{0}, {1}, {2}, {3, 4}, {5, 6}, {0, 7}, {1, 2, 8},
                 {0, 5, 6, 7, 9}}};
  throw std::runtime_error("unknown reference base: " + std::string(which));
}

const std::vector<MinimalPsiRow>& minimal_psi_rows() {
  static const std::vector<MinimalPsiRow> rows = {
      {1, {69}},
      {2, {61, 65, 68}},
      {3, {54, 59, 62, 64}},
      {4, {40, 42, 46, 49, 51, 53, 57, 58}},
      {5, {30, 31, 35, 39, 41, 45}},
      {6, {12, 13, 24, 26, 27, 28, 32, 34, 38}},
      {7, {5, 6, 7, 8, 9, 10, 11, 21, 23}},
      {8, {1, 2, 3}},
  };
  return rows;
}

const std::vector<std::vector<int>>& psi_blocks() {
  static const std::vector<std::vector<int>> blocks = {
      {1}, {2}, {3, 4}, {5}, {6}, {7, 14}, {8, 15}, {9, 16}, {10, 17},
      {11, 18}, {12, 19}, {13, 20}, {21, 22}, {23}, {24, 25}, {26}, {27},
      {28, 29}, {30}, {31}, {32, 33}, {34, 36}, {35, 37}, {38}, {39}, {40},
      {41, 43}, {42, 44}, {45, 47}, {46, 48}, {49, 50, 51, 52}, {53, 55},
      {54, 56}, {57}, {58}, {59, 60}, {61}, {62, 63}, {64, 66}, {65, 67},
      {68}, {69, 70},
  };
  return blocks;
}

const std::vector<std::pair<int, int>>& psi_block_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {1, 7},   {2, 11},  {2, 39},  {3, 8},   {3, 10},  {5, 12},  {5, 39},
      {6, 13},  {6, 39},  {7, 35},  {7, 39},  {7, 57},  {8, 28},  {8, 35},
      {8, 39},  {9, 24},  {10, 28}, {10, 35}, {11, 26}, {12, 30}, {12, 35},
      {13, 31}, {13, 49}, {21, 32}, {21, 34}, {21, 39}, {23, 35}, {23, 57},
      {24, 35}, {24, 57}, {26, 35}, {26, 57}, {27, 42}, {27, 49}, {27, 57},
      {28, 42}, {28, 49}, {28, 57}, {30, 42}, {31, 46}, {31, 62}, {32, 35},
      {32, 40}, {32, 41}, {34, 35}, {34, 41}, {35, 42}, {35, 49}, {38, 40},
      {38, 45}, {39, 49}, {40, 64}, {41, 42}, {41, 64}, {42, 62}, {45, 46},
      {45, 58}, {46, 59}, {46, 64}, {49, 62}, {53, 54}, {53, 64}, {54, 65},
      {57, 62}, {58, 59}, {59, 68}, {61, 69}, {62, 65}, {64, 65}, {64, 68},
      {65, 69}, {68, 69},
  };
  return edges;
}

const std::vector<PsiRecipe>& psi_recipes() {
  static const std::vector<PsiRecipe> recipes = {
      {1, 7, "A-ffA"},        {1, 7, "aA-ffA"},      {2, 11, "A&ibA"},
      {2, 39, "A|ifA"},       {3, 8, "A&ibA"},       {3, 10, "(A&ifA)|iaA"},
      {5, 12, "A&ibA"},       {5, 39, "A|ifA"},      {6, 13, "A&ibA"},
      {6, 39, "A|ifA"},       {7, 37, "gaA"},        {7, 39, "iA|fbA"},
      {7, 57, "ibA&bifA"},    {7, 57, "ibA|bifA"},   {7, 57, "ib(aA)|bifA"},
      {8, 28, "A|biA"},       {8, 37, "gaA"},        {8, 39, "iA|fibA"},
      {9, 24, "(A&ifA)|iaA"}, {10, 28, "(A&ifA)|iaA"}, {10, 37, "gaA"},
      {11, 26, "A|biA"},      {12, 30, "A|biA"},     {12, 37, "gaA"},
      {13, 31, "A|biA"},      {13, 51, "iA"},        {21, 32, "A|biA"},
      {21, 34, "A&ibA"},      {21, 39, "iA|fbA"},    {23, 35, "(A&ibA)|iaA"},
      {23, 57, "ibA|biA"},    {24, 35, "(A&ibA)|iaA"}, {24, 57, "ibA|biA"},
      {26, 35, "(A&ibA)|iaA"}, {26, 57, "ibA|bifA"}, {27, 51, "iA|ifA"},
      {27, 57, "ifA|fiA"},    {28, 51, "ifA|iaA"},   {28, 57, "ibA|biA"},
      {31, 46, "(A&ibA)|iaA"}, {32, 37, "gA"},       {32, 40, "fiA|iaA"},
      {32, 41, "A&ibA"},      {34, 37, "gaA"},       {34, 41, "A|biA"},
      {35, 51, "iA"},         {38, 40, "A|ifA"},     {38, 45, "A&ibA"},
      {39, 51, "iA"},         {40, 64, "iA"},        {41, 64, "iA|ifA"},
      {45, 48, "gaA"},        {45, 58, "A|biA"},     {46, 60, "A&ifA"},
      {46, 64, "iA"},         {49, 62, "bA"},        {53, 54, "agaA"},
      {53, 64, "iA"},         {54, 65, "iA"},        {57, 62, "bA"},
      {58, 60, "gA"},         {59, 68, "iA"},        {62, 67, "fA"},
      {64, 67, "fA"},         {64, 68, "bA"},
  };
  return recipes;
}

const std::vector<SpaceNumberRow>& space_number_table() {
  static const std::vector<SpaceNumberRow> rows = {
      {"GE", {8, 10, 12, 14},
       {10, 14, 16, 18, 20, 22, 24, 26, 28, 30, 32, 34}},
      {"KD", {10, 12, 14}, {18, 22, 28}},
      {"ED", {4, 6, 8, 10}, {4, 6, 8, 10, 16, 22}},
      {"OU", {4, 6, 8, 10}, {8, 10, 14, 16, 20}},
      {"EO", {4, 6, 8}, {4, 6, 8, 10, 16}},
      {"P", {4, 6}, {4, 6, 10}},
      {"D", {2}, {2, 4}},
  };
  return rows;
}

const std::vector<TopsumRow>& topsum_table() {
  static const std::vector<TopsumRow> rows = {
      {"GE", 1, {42, 44, 62, 63, 65, 67}, 8, 10},
      {"GE", 2,
       {24, 25, 27, 32, 33, 35, 37, 40, 41, 43, 49, 50, 51, 52, 57, 64, 66, 68},
       10, 24},
      {"GE", 3, {1, 7, 9, 14, 16, 21, 22, 23, 34, 36, 39}, 14, 34},
      {"KD", 1, {31, 46, 48, 59, 60, 62, 63, 64, 65, 66, 67, 68}, 10, 18},
      {"KD", 2, {13, 20, 38, 40, 45, 47, 49, 50, 51, 52, 57, 58}, 12, 22},
      {"KD", 3, {6, 39}, 14, 28},
      {"OU", 1, {62, 63, 65, 67}, 4, 8},
      {"OU", 2, {40, 49, 50, 51, 52, 57, 64, 66, 68}, 8, 16},
      {"OU", 3, {39}, 10, 20},
      {"ED", 1, {61, 65, 67}, 4, 4},
      {"ED", 2, {40, 46, 48, 59, 60, 64, 66, 68}, 8, 16},
      {"ED", 3, {38, 45, 47, 58}, 10, 22},
      {"EO", 1, {65, 67}, 4, 4},
      {"EO", 2, {40, 64, 66, 68}, 8, 16},
      {"P-noni", 1, {59, 60, 68}, 6, 6},
      {"P-noni", 2, {58}, 6, 10},
      {"P-ind", 1, {61}, 4, 4},
      {"P-ind", 2, {59, 60, 68}, 6, 6},
      {"P-ind", 3, {58}, 6, 10},
      {"D2", 1, {68}, 2, 4},
      {"D1", 1, {}, 2, 2},
      {"D1", 2, {68}, 2, 4},
  };
  return rows;
}

const std::array<BaseSpec, 4>& witness_bases() {
  // points p q r s t u v w x y z = 0..10
  static const std::array<BaseSpec, 4> bases = {{
      {11, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 1, 2, 3, 8}, {6, 7, 9},
            {0, 1, 4, 5, 6, 7, 9, 10}}},
      {11, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {2, 3, 8}, {6, 7, 9},
            {4, 5, 6, 7, 9, 10}}},
      {11, {{0, 1}, {2, 3}, {4, 5}, {0, 1, 2, 3, 4, 5, 6}, {0, 1, 2, 3, 7},
            {0, 1, 8}, {2, 3, 9}, {4, 5, 10}}},
      {11, {{0, 1}, {2, 3}, {4, 5}, {0, 1, 2, 3, 6}, {0, 1, 4, 5, 7},
            {0, 1, 8}, {2, 3, 4, 5, 9}, {2, 3, 10}}},
  }};
  return bases;
}

const std::array<WitnessClaims, 4>& witness_claims() {
  auto range = [](int lo, int hi, std::vector<int> skip = {}) {
    std::vector<int> out;
    for (int v = lo; v <= hi; ++v) {
      bool drop = false;
      for (int s : skip) drop |= (v == s);
      if (!drop) out.push_back(v);
    }
    return out;
  };
  static const std::array<WitnessClaims, 4> claims = [&] {
    std::array<WitnessClaims, 4> c;
    // first witness: 5-19 and 24-30 except 6 and 13, plus 61
    c[0].must_have = range(5, 19, {6, 13});
    for (int v : range(24, 30)) c[0].must_have.push_back(v);
    c[0].must_have.push_back(61);
    c[0].must_miss = {1, 2, 3, 4, 6, 13, 20, 21, 22, 23};
    // second: 6, 13, 20-22 and 31-68 except 57
    c[1].must_have = {6, 13, 20, 21, 22};
    for (int v : range(31, 68, {57})) c[1].must_have.push_back(v);
    c[1].must_miss = range(1, 5);
    for (int v : range(7, 12)) c[1].must_miss.push_back(v);
    for (int v : range(14, 19)) c[1].must_miss.push_back(v);
    for (int v : range(23, 30)) c[1].must_miss.push_back(v);
    c[1].must_miss.push_back(57);
    // third: 2-4 and 57, plus 61
    c[2].must_have = {2, 3, 4, 57, 61};
    // fourth: 1 and 23, plus 61
    c[3].must_have = {1, 23, 61};
    return c;
  }();
  return claims;
}

}  // namespace ref
}  // namespace kfg
