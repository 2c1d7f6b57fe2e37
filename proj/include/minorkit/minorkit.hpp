#pragma once

#include "minorkit/box.hpp"
#include "minorkit/boxbuild.hpp"
#include "minorkit/coloring.hpp"
#include "minorkit/edit.hpp"
#include "minorkit/error.hpp"
#include "minorkit/flow.hpp"
#include "minorkit/graph.hpp"
#include "minorkit/rational.hpp"
#include "minorkit/stealth.hpp"
