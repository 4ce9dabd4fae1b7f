#pragma once

#include "hgcount/automorphism.hpp"
#include "hgcount/bigint.hpp"
#include "hgcount/census.hpp"
#include "hgcount/error.hpp"
#include "hgcount/fpf.hpp"
#include "hgcount/group.hpp"
#include "hgcount/holomorph.hpp"
#include "hgcount/lemma_suite.hpp"
#include "hgcount/orbit.hpp"
#include "hgcount/pair_graph.hpp"
#include "hgcount/pair_spec.hpp"
#include "hgcount/power.hpp"
#include "hgcount/structured_endo.hpp"
#include "hgcount/verification.hpp"
