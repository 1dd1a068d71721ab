#pragma once

#include "hurwitz/core.hpp"
#include "hurwitz/enumerate.hpp"
#include "hurwitz/galois.hpp"
#include "hurwitz/kummer.hpp"
#include "hurwitz/monodromy.hpp"
