#pragma once

#include "design_curves/accounting.hpp"
#include "design_curves/assemble.hpp"
#include "design_curves/assembly.hpp"
#include "design_curves/curve_verify.hpp"
#include "design_curves/design_set.hpp"
#include "design_curves/explicit_curves.hpp"
#include "design_curves/hybrid.hpp"
#include "design_curves/intersect.hpp"
#include "design_curves/io.hpp"
#include "design_curves/lift.hpp"
#include "design_curves/mst.hpp"
#include "design_curves/projective.hpp"
#include "design_curves/smoothing.hpp"
#include "design_curves/wxm.hpp"
