#pragma once

#include "permutation.hpp"
#include "enumerate.hpp"
#include "injections.hpp"
#include "almost_decomp.hpp"
#include "series.hpp"
#include "partitions.hpp"
#include "report.hpp"
