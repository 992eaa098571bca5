#pragma once

#include "wdp/catalog.hpp"
#include "wdp/delta.hpp"
#include "wdp/errors.hpp"
#include "wdp/evaluate.hpp"
#include "wdp/json_io.hpp"
#include "wdp/linalg.hpp"
#include "wdp/picard.hpp"
#include "wdp/poly.hpp"
#include "wdp/rational.hpp"
#include "wdp/zariski.hpp"
