#pragma once

#include "qeuler/error.hpp"
#include "qeuler/rational.hpp"
#include "qeuler/polynomial.hpp"
#include "qeuler/rational_function.hpp"
#include "qeuler/linear_combination.hpp"
#include "qeuler/matrix.hpp"
#include "qeuler/expression.hpp"
#include "qeuler/frobenius.hpp"
#include "qeuler/format.hpp"
#include "qeuler/partition.hpp"
#include "qeuler/grassmannian.hpp"
#include "qeuler/rim_hook.hpp"
#include "qeuler/presented.hpp"
#include "qeuler/root_system.hpp"
#include "qeuler/orbit.hpp"
#include "qeuler/gkm.hpp"
#include "qeuler/io.hpp"
