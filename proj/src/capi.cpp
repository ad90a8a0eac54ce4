// C API below
#include "corpus.hpp"
