#ifndef MCINV_HPP
#define MCINV_HPP

#include "mcinv/error.hpp"
#include "mcinv/scalar.hpp"
#include "mcinv/root_set.hpp"
#include "mcinv/root_system.hpp"
#include "mcinv/coxeter.hpp"
#include "mcinv/completeness.hpp"
#include "mcinv/constructions.hpp"
#include "mcinv/search.hpp"
#include "mcinv/abelian.hpp"

#endif  // MCINV_HPP
