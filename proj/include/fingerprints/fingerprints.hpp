#pragma once

// Umbrella header for the fingerprint filtering library.

#include "fingerprints/bench.hpp"
#include "fingerprints/corpus.hpp"
#include "fingerprints/dictionary.hpp"
#include "fingerprints/edit_distance.hpp"
#include "fingerprints/fingerprint.hpp"
#include "fingerprints/letter_model.hpp"
#include "fingerprints/reference.hpp"
