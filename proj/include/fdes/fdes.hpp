#pragma once

#include "fdes/error.hpp"
#include "fdes/grade.hpp"
#include "fdes/alphabet.hpp"
#include "fdes/language.hpp"
#include "fdes/automaton.hpp"
#include "fdes/projection.hpp"
#include "fdes/predicates.hpp"
#include "fdes/synthesis.hpp"
#include "fdes/approximation.hpp"
#include "fdes/oracle.hpp"
#include "fdes/fdl.hpp"
