#ifndef MDS_MDS_HPP
#define MDS_MDS_HPP

// Umbrella header for the numeric library. The JSON report and CLI layers live in
// mds/report.hpp and mds/cli.hpp and pull in their own third-party headers.

#include "mds/blowup.hpp"
#include "mds/classify.hpp"
#include "mds/common.hpp"
#include "mds/error.hpp"
#include "mds/hilbert.hpp"
#include "mds/integer.hpp"
#include "mds/k3lattice.hpp"
#include "mds/linkage.hpp"
#include "mds/numerics.hpp"
#include "mds/pell.hpp"
#include "mds/surd.hpp"

#endif
