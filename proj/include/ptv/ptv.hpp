#pragma once

#include "ptv/cayley.hpp"
#include "ptv/classification.hpp"
#include "ptv/multiset.hpp"
#include "ptv/rng.hpp"
#include "ptv/transformation.hpp"
#include "ptv/variant.hpp"
#include "ptv/verification.hpp"
