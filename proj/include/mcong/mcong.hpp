#pragma once

#include "mcong/derivation.hpp"
#include "mcong/equation.hpp"
#include "mcong/errors.hpp"
#include "mcong/fastpath.hpp"
#include "mcong/known.hpp"
#include "mcong/modular.hpp"
#include "mcong/msection.hpp"
#include "mcong/oracle.hpp"
#include "mcong/parser.hpp"
#include "mcong/poly.hpp"
#include "mcong/ratfun.hpp"
#include "mcong/scheme.hpp"
#include "mcong/scheme_file.hpp"
