#pragma once

// Exact-arithmetic engine for derivations, antiderivations and biderivations
// of finite-dimensional algebras presented by structure constants.

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/inner.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/parse.hpp"
#include "leibniz/rational.hpp"
#include "leibniz/report.hpp"
#include "leibniz/solver.hpp"
