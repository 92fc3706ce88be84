#pragma once

#include "pcoinv/bases.hpp"
#include "pcoinv/bipoly.hpp"
#include "pcoinv/characters.hpp"
#include "pcoinv/combinat.hpp"
#include "pcoinv/cyclotomic.hpp"
#include "pcoinv/deform.hpp"
#include "pcoinv/diagonal.hpp"
#include "pcoinv/matrix.hpp"
#include "pcoinv/modular.hpp"
#include "pcoinv/mpoly.hpp"
#include "pcoinv/qseries.hpp"
#include "pcoinv/quotient.hpp"
#include "pcoinv/rational.hpp"
#include "pcoinv/segre.hpp"
#include "pcoinv/serialize.hpp"
