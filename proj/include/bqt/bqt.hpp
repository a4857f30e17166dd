#ifndef BQT_BQT_HPP
#define BQT_BQT_HPP

#include "alexander.hpp"
#include "axioms.hpp"
#include "brute_iso.hpp"
#include "count.hpp"
#include "enumerate.hpp"
#include "gauss.hpp"
#include "matrix_io.hpp"
#include "module.hpp"
#include "module_iso.hpp"
#include "structural_iso.hpp"
#include "table.hpp"

#endif
