# Copyright 2026 The authcode Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Multi-receiver authentication codes built on linear codes over F_q."""

from ._core import (
    DEFAULT_CAP,
    AuthcodeError,
    CapExceeded,
    Code,
    Scheme,
    classify,
    is_prime,
    minimal_substitution_groups,
    paper_example,
    security_report,
    thresholds,
)

__all__ = [
    "DEFAULT_CAP",
    "AuthcodeError",
    "CapExceeded",
    "Code",
    "Scheme",
    "classify",
    "is_prime",
    "minimal_substitution_groups",
    "paper_example",
    "security_report",
    "thresholds",
]
