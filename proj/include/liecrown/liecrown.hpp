#pragma once
// Everything in one include.

#include "liecrown/chieffac.hpp"
#include "liecrown/constructions.hpp"
#include "liecrown/corpus.hpp"
#include "liecrown/crowns.hpp"
#include "liecrown/error.hpp"
#include "liecrown/field.hpp"
#include "liecrown/io.hpp"
#include "liecrown/isomorphism.hpp"
#include "liecrown/lie_algebra.hpp"
#include "liecrown/matrix.hpp"
#include "liecrown/modrep.hpp"
#include "liecrown/oracle.hpp"
#include "liecrown/polynomial.hpp"
#include "liecrown/primitive.hpp"
#include "liecrown/primitive_types.hpp"
#include "liecrown/subspace.hpp"
