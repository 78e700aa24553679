#pragma once

#include <fibward/exact.hpp>
#include <fibward/word.hpp>
#include <fibward/wordgen.hpp>
#include <fibward/pathcalc.hpp>
#include <fibward/curve.hpp>
#include <fibward/snowflake.hpp>
#include <fibward/metrics.hpp>
#include <fibward/tiling.hpp>
#include <fibward/render.hpp>
#include <fibward/serialize.hpp>
#include <fibward/conformance.hpp>
