#pragma once

#include "linkpred/boosting.hpp"
#include "linkpred/dataset.hpp"
#include "linkpred/edge_io.hpp"
#include "linkpred/error.hpp"
#include "linkpred/features.hpp"
#include "linkpred/forest.hpp"
#include "linkpred/graph.hpp"
#include "linkpred/indices.hpp"
#include "linkpred/metrics.hpp"
#include "linkpred/model.hpp"
#include "linkpred/model_io.hpp"
#include "linkpred/pipeline.hpp"
#include "linkpred/report.hpp"
#include "linkpred/rng.hpp"
#include "linkpred/scoring.hpp"
#include "linkpred/split.hpp"
#include "linkpred/stacking.hpp"
#include "linkpred/svm.hpp"
#include "linkpred/synthgen.hpp"
#include "linkpred/tree.hpp"
