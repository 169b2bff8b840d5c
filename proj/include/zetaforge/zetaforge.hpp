#ifndef ZETAFORGE_ZETAFORGE_HPP
#define ZETAFORGE_ZETAFORGE_HPP

#include "catalog.hpp"
#include "census.hpp"
#include "darts.hpp"
#include "determinant.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "matrix.hpp"
#include "polynomial.hpp"
#include "roots.hpp"
#include "series.hpp"
#include "zeta.hpp"

#endif // ZETAFORGE_ZETAFORGE_HPP
