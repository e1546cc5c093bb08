#pragma once

// Convenience umbrella for the whole library.

#include "qlor/serialize.hpp"
