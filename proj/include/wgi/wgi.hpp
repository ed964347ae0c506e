#pragma once

#include "wgi/census.hpp"
#include "wgi/closed_form.hpp"
#include "wgi/derive.hpp"
#include "wgi/engine.hpp"
#include "wgi/enumerate.hpp"
#include "wgi/extremal.hpp"
#include "wgi/generators.hpp"
#include "wgi/graph.hpp"
#include "wgi/inertia.hpp"
#include "wgi/matrix.hpp"
#include "wgi/rational.hpp"
#include "wgi/structure.hpp"
#include "wgi/transforms.hpp"
