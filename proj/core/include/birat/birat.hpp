#pragma once

#include "birat/bipoly.hpp"
#include "birat/coeff.hpp"
#include "birat/decide.hpp"
#include "birat/error.hpp"
#include "birat/format.hpp"
#include "birat/gcd.hpp"
#include "birat/groebner.hpp"
#include "birat/monomial.hpp"
#include "birat/parse.hpp"
#include "birat/unipoly.hpp"
#include "birat/version.hpp"
