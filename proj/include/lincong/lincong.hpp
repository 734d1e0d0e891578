#pragma once

#include "lincong/congruence.hpp"
#include "lincong/errors.hpp"
#include "lincong/integer_arithmetic.hpp"
#include "lincong/oracle.hpp"
#include "lincong/parser.hpp"
#include "lincong/sampling.hpp"
