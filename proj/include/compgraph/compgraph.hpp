#pragma once

#include "compgraph/analysis.hpp"
#include "compgraph/construct.hpp"
#include "compgraph/core.hpp"
#include "compgraph/io.hpp"
#include "compgraph/oracle.hpp"
#include "compgraph/search.hpp"
#include "compgraph/witnesses.hpp"
