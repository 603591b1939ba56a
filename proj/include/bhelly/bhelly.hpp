#pragma once

#include "bhelly/biclique.hpp"
#include "bhelly/bicliques.hpp"
#include "bhelly/edge_io.hpp"
#include "bhelly/generators.hpp"
#include "bhelly/graph.hpp"
#include "bhelly/oracle.hpp"
#include "bhelly/recognize_fast.hpp"
#include "bhelly/recognize_slow.hpp"
#include "bhelly/squares.hpp"
#include "bhelly/twins.hpp"
#include "bhelly/witness.hpp"
