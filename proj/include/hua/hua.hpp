#pragma once

#include "hua/arith.hpp"
#include "hua/conditions.hpp"
#include "hua/fft.hpp"
#include "hua/gauss.hpp"
#include "hua/parallel.hpp"
#include "hua/rational.hpp"
#include "hua/report.hpp"
#include "hua/represent.hpp"
#include "hua/residue.hpp"
#include "hua/sequence.hpp"
#include "hua/sieve.hpp"
#include "hua/spectral.hpp"
#include "hua/transference.hpp"
