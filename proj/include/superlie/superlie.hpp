#ifndef SUPERLIE_SUPERLIE_HPP
#define SUPERLIE_SUPERLIE_HPP

#include "superlie/assoc.hpp"
#include "superlie/core.hpp"
#include "superlie/hall.hpp"
#include "superlie/parse.hpp"
#include "superlie/reduce.hpp"
#include "superlie/words.hpp"

#endif  // SUPERLIE_SUPERLIE_HPP
