#pragma once

#include "aggregators.hpp"
#include "axioms.hpp"
#include "criteria.hpp"
#include "cscc.hpp"
#include "error.hpp"
#include "harness.hpp"
#include "io.hpp"
#include "layout.hpp"
#include "opinion_state.hpp"
#include "oracle.hpp"
#include "quotient_order.hpp"
#include "running_example.hpp"
#include "sampling.hpp"
#include "subset.hpp"
#include "weak_order.hpp"
