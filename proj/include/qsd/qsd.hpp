#pragma once

#include "qsd/action.hpp"
#include "qsd/algebra.hpp"
#include "qsd/coefficient.hpp"
#include "qsd/element.hpp"
#include "qsd/errors.hpp"
#include "qsd/fock.hpp"
#include "qsd/integral.hpp"
#include "qsd/parse.hpp"
#include "qsd/poly.hpp"
#include "qsd/random.hpp"
#include "qsd/relations.hpp"
#include "qsd/report.hpp"
#include "qsd/uq.hpp"
