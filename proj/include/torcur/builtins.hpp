#ifndef TORCUR_BUILTINS_HPP
#define TORCUR_BUILTINS_HPP

// Built-in fans used by the self test and the test suite.

#include "torcur/fan.hpp"

namespace torcur {

Fan fan_line();           // the projective line: rays (-1), (1)
Fan fan_product_lines();  // product of two projective lines
Fan fan_blowup_plane();   // first Hirzebruch surface (plane blown up at a point)
Fan fan_projective_space(int n);

}  // namespace torcur

#endif
