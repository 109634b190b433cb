#pragma once

#include "rtdlite/barcode.hpp"
#include "rtdlite/batch.hpp"
#include "rtdlite/disjoint_sets.hpp"
#include "rtdlite/errors.hpp"
#include "rtdlite/gradient.hpp"
#include "rtdlite/io.hpp"
#include "rtdlite/mst.hpp"
#include "rtdlite/normalize.hpp"
#include "rtdlite/point_cloud.hpp"
#include "rtdlite/stats.hpp"
#include "rtdlite/synth.hpp"
#include "rtdlite/weight_matrix.hpp"
