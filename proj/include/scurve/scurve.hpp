#pragma once

#include "braid.hpp"
#include "classify.hpp"
#include "curves.hpp"
#include "invariants.hpp"
#include "laurent.hpp"
#include "surgery.hpp"
#include "synthesis.hpp"
