#pragma once

#include "gapvir/error.hpp"
#include "gapvir/rational.hpp"
#include "gapvir/scalar.hpp"
#include "gapvir/lincomb.hpp"
#include "gapvir/algebra.hpp"
#include "gapvir/involution.hpp"
#include "gapvir/sampling.hpp"
#include "gapvir/highest_weight.hpp"
#include "gapvir/pbw.hpp"
#include "gapvir/linalg.hpp"
#include "gapvir/verma.hpp"
#include "gapvir/definiteness.hpp"
#include "gapvir/gram.hpp"
#include "gapvir/fock.hpp"
#include "gapvir/series.hpp"
#include "gapvir/unitarity.hpp"
#include "gapvir/tensor_model.hpp"
#include "gapvir/checks.hpp"
#include "gapvir/report.hpp"
