#ifndef TREEPLEX_TREEPLEX_HPP
#define TREEPLEX_TREEPLEX_HPP

#include "treeplex/complex.hpp"
#include "treeplex/counting.hpp"
#include "treeplex/enumerate.hpp"
#include "treeplex/error.hpp"
#include "treeplex/geometry.hpp"
#include "treeplex/json_io.hpp"
#include "treeplex/linalg.hpp"
#include "treeplex/polygon.hpp"
#include "treeplex/rational.hpp"
#include "treeplex/signature.hpp"
#include "treeplex/tree.hpp"

#endif
