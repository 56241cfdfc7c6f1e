#ifndef MCKAY_MCKAY_HPP_
#define MCKAY_MCKAY_HPP_

#include "bijection.hpp"
#include "chartable.hpp"
#include "corpus.hpp"
#include "correspondences.hpp"
#include "counterexample.hpp"
#include "cyclotomic.hpp"
#include "errors.hpp"
#include "permgroup.hpp"
#include "permutation.hpp"

#endif  // MCKAY_MCKAY_HPP_
