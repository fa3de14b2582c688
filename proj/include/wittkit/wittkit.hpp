#pragma once

#include "wittkit/abelian.hpp"
#include "wittkit/bounds.hpp"
#include "wittkit/clifford.hpp"
#include "wittkit/error.hpp"
#include "wittkit/int_matrix.hpp"
#include "wittkit/integer.hpp"
#include "wittkit/smith.hpp"
#include "wittkit/spaces.hpp"
#include "wittkit/tables.hpp"
#include "wittkit/witt.hpp"
