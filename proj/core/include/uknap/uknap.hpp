#pragma once

// Convenience umbrella header.

#include "uknap/errors.hpp"
#include "uknap/evaluator.hpp"
#include "uknap/generators.hpp"
#include "uknap/greedy.hpp"
#include "uknap/instance.hpp"
#include "uknap/io.hpp"
#include "uknap/policy.hpp"
#include "uknap/policy_build.hpp"
#include "uknap/policy_build_ud.hpp"
#include "uknap/rational.hpp"
