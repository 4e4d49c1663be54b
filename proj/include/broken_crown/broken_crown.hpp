#pragma once

#include "broken_crown/construct.hpp"
#include "broken_crown/errors.hpp"
#include "broken_crown/formats.hpp"
#include "broken_crown/graph.hpp"
#include "broken_crown/hc_enum.hpp"
#include "broken_crown/transform.hpp"
