#pragma once

#include "polyring.hpp"
#include "groebner.hpp"
#include "lifting.hpp"
#include "cluster.hpp"
#include "gr2n.hpp"
#include "gr36.hpp"
#include "checks.hpp"
#include "properties.hpp"
