#pragma once

// Umbrella header.

#include "wadge/degrees.hpp"
#include "wadge/diff_hierarchy.hpp"
#include "wadge/enumerate.hpp"
#include "wadge/error.hpp"
#include "wadge/gallery.hpp"
#include "wadge/io.hpp"
#include "wadge/poset.hpp"
#include "wadge/reduction.hpp"
#include "wadge/suites.hpp"
#include "wadge/topology.hpp"
