#pragma once

#include "treelike/bfs_tree.hpp"
#include "treelike/cnf.hpp"
#include "treelike/distance.hpp"
#include "treelike/error.hpp"
#include "treelike/exact.hpp"
#include "treelike/generators.hpp"
#include "treelike/graph.hpp"
#include "treelike/half_int.hpp"
#include "treelike/matrix.hpp"
#include "treelike/report.hpp"
#include "treelike/rooted_insize.hpp"
#include "treelike/slimness.hpp"
#include "treelike/thinness.hpp"
#include "treelike/tree_search.hpp"
