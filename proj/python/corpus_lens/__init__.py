# Copyright 2026 The corpus-lens Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Corpus analytics: preprocessing, tf-idf, NMF/LDA topics, evoked emotions."""

import os as _os
from pathlib import Path as _Path

# Point the bundled-data lookup at the packaged copies unless the caller
# already chose a directory.
_packaged_data = _Path(__file__).resolve().parent / "data"
if "CORPUS_LENS_DATA" not in _os.environ and _packaged_data.is_dir():
    _os.environ["CORPUS_LENS_DATA"] = str(_packaged_data)

from ._corpus_lens import *  # noqa: F401,F403,E402
from ._corpus_lens import __version__, __doc__  # noqa: F401,E402
