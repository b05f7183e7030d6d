#pragma once

#include <array>
#include <string_view>

namespace kfg {

// Composition inside the 20-word even family, excluding 0 and id whose
// products are forced. Entry [r][c] is the canonical name of row?column
// (row applied after column).
inline constexpr int kMulSize = 18;
inline constexpr std::array<std::string_view, kMulSize> kMulWords = {
    "b", "i", "bi", "ib", "bib", "ibi",
    "f", "ff", "fi", "fb", "fbi", "fib", "fif", "bif", "if",
    "g", "bg", "fbg"};

// clang-format off
inline constexpr std::array<std::array<std::string_view, kMulSize>, kMulSize>
    kMulTable = {{
    //         b      i      bi     ib     bib    ibi    f      ff     fi     fb     fbi    fib    fif    bif    if     g      bg     fbg
    /*b*/   {{"b",   "bi",  "bi",  "bib", "bib", "bi",  "f",   "ff",  "fi",  "fb",  "fbi", "fib", "fif", "bif", "bif", "bg",  "bg",  "fbg"}},
    /*i*/   {{"ib",  "i",   "ibi", "ib",  "ib",  "ibi", "if",  "0",   "0",   "0",   "0",   "0",   "0",   "if",  "if",  "0",   "if",  "0"}},
    /*bi*/  {{"bib", "bi",  "bi",  "bib", "bib", "bi",  "bif", "0",   "0",   "0",   "0",   "0",   "0",   "bif", "bif", "0",   "bif", "0"}},
    /*ib*/  {{"ib",  "ibi", "ibi", "ib",  "ib",  "ibi", "if",  "0",   "0",   "0",   "0",   "0",   "0",   "if",  "if",  "if",  "if",  "0"}},
    /*bib*/ {{"bib", "bi",  "bi",  "bib", "bib", "bi",  "bif", "0",   "0",   "0",   "0",   "0",   "0",   "bif", "bif", "bif", "bif", "0"}},
    /*ibi*/ {{"ib",  "ibi", "ibi", "ib",  "ib",  "ibi", "if",  "0",   "0",   "0",   "0",   "0",   "0",   "if",  "if",  "0",   "if",  "0"}},
    /*f*/   {{"fb",  "fi",  "fbi", "fib", "fib", "fbi", "ff",  "ff",  "fi",  "fb",  "fbi", "fib", "fif", "fif", "fif", "bg",  "fbg", "fbg"}},
    /*ff*/  {{"fb",  "fi",  "fbi", "fib", "fib", "fbi", "ff",  "ff",  "fi",  "fb",  "fbi", "fib", "fif", "fif", "fif", "fbg", "fbg", "fbg"}},
    /*fi*/  {{"fib", "fi",  "fbi", "fib", "fib", "fbi", "fif", "0",   "0",   "0",   "0",   "0",   "0",   "fif", "fif", "0",   "fif", "0"}},
    /*fb*/  {{"fb",  "fbi", "fbi", "fib", "fib", "fbi", "ff",  "ff",  "fi",  "fb",  "fbi", "fib", "fif", "fif", "fif", "fbg", "fbg", "fbg"}},
    /*fbi*/ {{"fib", "fbi", "fbi", "fib", "fib", "fbi", "fif", "0",   "0",   "0",   "0",   "0",   "0",   "fif", "fif", "0",   "fif", "0"}},
    /*fib*/ {{"fib", "fbi", "fbi", "fib", "fib", "fbi", "fif", "0",   "0",   "0",   "0",   "0",   "0",   "fif", "fif", "fif", "fif", "0"}},
    /*fif*/ {{"0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "fif", "0",   "0"}},
    /*bif*/ {{"0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "bif", "0",   "0"}},
    /*if*/  {{"0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "0",   "if",  "0",   "0"}},
    /*g*/   {{"fb",  "0",   "fbi", "0",   "fib", "0",   "ff",  "ff",  "fi",  "fb",  "fbi", "fib", "fif", "fif", "0",   "g",   "fbg", "fbg"}},
    /*bg*/  {{"fb",  "0",   "fbi", "0",   "fib", "0",   "ff",  "ff",  "fi",  "fb",  "fbi", "fib", "fif", "fif", "0",   "bg",  "fbg", "fbg"}},
    /*fbg*/ {{"fb",  "0",   "fbi", "0",   "fib", "0",   "ff",  "ff",  "fi",  "fb",  "fbi", "fib", "fif", "fif", "0",   "fbg", "fbg", "fbg"}},
}};
// clang-format on

}  // namespace kfg
