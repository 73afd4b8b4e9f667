#pragma once

#include "pythdiam/arith.hpp"
#include "pythdiam/diophantine.hpp"
#include "pythdiam/error.hpp"
#include "pythdiam/examples.hpp"
#include "pythdiam/families.hpp"
#include "pythdiam/geometry.hpp"
#include "pythdiam/natural.hpp"
#include "pythdiam/output.hpp"
#include "pythdiam/pythagorean.hpp"
#include "pythdiam/rational.hpp"
#include "pythdiam/verify.hpp"
