#pragma once

#include "meso/classifier.hpp"
#include "meso/counting.hpp"
#include "meso/detector.hpp"
#include "meso/infinite.hpp"
#include "meso/minimal_forbidden.hpp"
#include "meso/word.hpp"
