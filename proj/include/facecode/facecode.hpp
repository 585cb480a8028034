#pragma once

#include "facecode/combinatorics.hpp"
#include "facecode/constructors.hpp"
#include "facecode/corpus.hpp"
#include "facecode/error.hpp"
#include "facecode/facecodes.hpp"
#include "facecode/gf2.hpp"
#include "facecode/io.hpp"
#include "facecode/morse.hpp"
#include "facecode/polytope.hpp"
#include "facecode/rational.hpp"
#include "facecode/screen.hpp"
#include "facecode/smallcover.hpp"
#include "facecode/verify.hpp"
