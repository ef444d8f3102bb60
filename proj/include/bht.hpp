#pragma once

#include "bht/clopen.hpp"
#include "bht/element.hpp"
#include "bht/embedding.hpp"
#include "bht/error.hpp"
#include "bht/homology.hpp"
#include "bht/point.hpp"
#include "bht/random.hpp"
#include "bht/space.hpp"
#include "bht/text.hpp"
#include "bht/witness.hpp"
