#ifndef RIAUT_RIAUT_HPP_
#define RIAUT_RIAUT_HPP_

#include "decision.hpp"
#include "element.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "generation.hpp"
#include "green.hpp"
#include "prefix_code.hpp"
#include "rihom.hpp"
#include "word.hpp"

#endif  // RIAUT_RIAUT_HPP_
