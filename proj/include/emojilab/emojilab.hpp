// Copyright 2026 The emojilab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Umbrella header. Including report/manifest.hpp (pulled in here) requires
// linking OpenSSL's libcrypto.

#pragma once

#include "emojilab/align/align.hpp"
#include "emojilab/align/embedding_io.hpp"
#include "emojilab/align/linalg.hpp"
#include "emojilab/divergence/divergence.hpp"
#include "emojilab/emoji/emoji.hpp"
#include "emojilab/emoji/modality.hpp"
#include "emojilab/error.hpp"
#include "emojilab/ingest/dedup.hpp"
#include "emojilab/ingest/jsonl.hpp"
#include "emojilab/ingest/normalize.hpp"
#include "emojilab/ingest/post.hpp"
#include "emojilab/ingest/split.hpp"
#include "emojilab/parallel.hpp"
#include "emojilab/polarity/polarity.hpp"
#include "emojilab/report/manifest.hpp"
#include "emojilab/report/report.hpp"
#include "emojilab/rng.hpp"
#include "emojilab/stats/stats.hpp"
#include "emojilab/synth/synth.hpp"
#include "emojilab/transfer/logreg.hpp"
#include "emojilab/transfer/tfidf.hpp"
#include "emojilab/transfer/transfer.hpp"
