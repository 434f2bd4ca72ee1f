#pragma once

#include "baconf/certify/certificate.hpp"
#include "baconf/certify/ode.hpp"
#include "baconf/config/builders.hpp"
#include "baconf/config/equivalence.hpp"
#include "baconf/config/json.hpp"
#include "baconf/config/locus_solver.hpp"
#include "baconf/darboux/verify.hpp"
#include "baconf/qi/hilbert.hpp"
#include "baconf/qi/segments.hpp"
#include "baconf/version.hpp"
