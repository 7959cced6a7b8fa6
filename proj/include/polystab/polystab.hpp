#pragma once

#include "polystab/rational.hpp"
#include "polystab/matrix.hpp"
#include "polystab/form.hpp"
#include "polystab/charpoly.hpp"
#include "polystab/hurwitz.hpp"
#include "polystab/wds.hpp"
#include "polystab/pipeline.hpp"
#include "polystab/harness.hpp"
#include "polystab/io.hpp"
