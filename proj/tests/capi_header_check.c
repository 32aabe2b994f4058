/*
 * Copyright 2026 The lowdisc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* The public header must stay consumable from plain C. */

#include <lowdisc/lowdisc.h>

#include <stdio.h>

int main(void) {
  printf("lowdisc %s\n", lowdisc_version());
  lowdisc_spec* spec = NULL;
  if (lowdisc_spec_parse("vdc:b=2", &spec) != LOWDISC_OK) return 1;
  lowdisc_points* ps = NULL;
  if (lowdisc_generate(spec, 4, &ps) != LOWDISC_OK) return 1;
  double x = 0.0;
  if (lowdisc_points_get(ps, 0, &x) != LOWDISC_OK || x != 0.5) return 1;
  lowdisc_points_free(ps);
  lowdisc_spec_free(spec);
  return 0;
}
