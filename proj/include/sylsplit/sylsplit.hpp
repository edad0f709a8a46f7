#ifndef SYLSPLIT_SYLSPLIT_HPP
#define SYLSPLIT_SYLSPLIT_HPP

#include "caps.hpp"
#include "catalog.hpp"
#include "cayley.hpp"
#include "errors.hpp"
#include "fusion.hpp"
#include "perm_group.hpp"
#include "permutation.hpp"
#include "quotient.hpp"
#include "report.hpp"
#include "search.hpp"
#include "structure.hpp"
#include "theorem.hpp"
#include "transfer.hpp"
#include "weak_closure.hpp"

#endif // SYLSPLIT_SYLSPLIT_HPP
