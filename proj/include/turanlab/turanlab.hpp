#pragma once

#include "turanlab/canonical.hpp"
#include "turanlab/checked.hpp"
#include "turanlab/construction.hpp"
#include "turanlab/counting.hpp"
#include "turanlab/enumeration.hpp"
#include "turanlab/error.hpp"
#include "turanlab/expr.hpp"
#include "turanlab/graph.hpp"
#include "turanlab/graph6.hpp"
#include "turanlab/io.hpp"
#include "turanlab/matching.hpp"
#include "turanlab/theorems.hpp"
#include "turanlab/verify.hpp"
