#pragma once

#include "eulerid/rational.hpp"
#include "eulerid/polynomial.hpp"
#include "eulerid/cyclotomic.hpp"
#include "eulerid/series.hpp"
#include "eulerid/classical.hpp"
#include "eulerid/dirichlet.hpp"
#include "eulerid/twisted.hpp"
#include "eulerid/serialize.hpp"
#include "eulerid/certificate.hpp"
#include "eulerid/identities.hpp"
#include "eulerid/fermionic.hpp"
#include "eulerid/suites.hpp"
