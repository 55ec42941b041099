#pragma once

#include "turaev/errors.hpp"
#include "turaev/gauss_code.hpp"
#include "turaev/subcodes.hpp"
#include "turaev/ribbon.hpp"
#include "turaev/carrier.hpp"
#include "turaev/surface.hpp"
#include "turaev/moves.hpp"
#include "turaev/prime.hpp"
#include "turaev/export.hpp"
#include "turaev/report.hpp"
#include "turaev/batch.hpp"
