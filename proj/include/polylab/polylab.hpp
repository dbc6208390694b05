#pragma once

#include "polylab/bounds.hpp"
#include "polylab/error.hpp"
#include "polylab/generators.hpp"
#include "polylab/graph.hpp"
#include "polylab/hdx.hpp"
#include "polylab/link.hpp"
#include "polylab/metric.hpp"
#include "polylab/nbw.hpp"
#include "polylab/polygraph.hpp"
#include "polylab/report.hpp"
#include "polylab/spectral.hpp"
#include "polylab/spectrum.hpp"
