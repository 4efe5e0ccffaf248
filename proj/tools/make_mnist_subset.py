#!/usr/bin/env python3
# Copyright 2026 The qnn-circuit Authors

# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at

#     http:#www.apache.org/licenses/LICENSE-2.0

# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Build the IDX sample files under data/ from the 5000-image MNIST subset
bundled with mlxtend (500 images per digit, one CSV row per image).

  pip download --no-deps mlxtend -d /tmp/pkgs
  python3 tools/make_mnist_subset.py /tmp/pkgs/mlxtend-*.whl data/

Train files take the first 400 images of each digit, test files the last 100.
Both are shuffled with a fixed seed so the digits interleave.
"""
import gzip
import io
import struct
import sys
import zipfile

import numpy as np

CSV_MEMBER = "mlxtend/data/data/mnist_5k.csv.gz"


def write_idx(prefix, images, labels):
    with gzip.GzipFile(prefix + "-images-idx3-ubyte.gz", "wb", mtime=0) as f:
        f.write(struct.pack(">IIII", 0x803, len(images), 28, 28))
        f.write(images.astype(np.uint8).tobytes())
    with gzip.GzipFile(prefix + "-labels-idx1-ubyte.gz", "wb", mtime=0) as f:
        f.write(struct.pack(">II", 0x801, len(labels)))
        f.write(labels.astype(np.uint8).tobytes())


def main(wheel, outdir):
    raw = zipfile.ZipFile(wheel).read(CSV_MEMBER)
    rows = np.loadtxt(gzip.open(io.BytesIO(raw)), delimiter=",")
    images, labels = rows[:, :-1], rows[:, -1].astype(int)
    train, test = [], []
    for digit in range(10):
        idx = np.flatnonzero(labels == digit)
        train.extend(idx[:400])
        test.extend(idx[400:])
    rng = np.random.default_rng(20201001)
    for name, sel in (("train", np.array(train)), ("test", np.array(test))):
        sel = rng.permutation(sel)
        write_idx(f"{outdir}/mnist5k-{name}", images[sel], labels[sel])


if __name__ == "__main__":
    main(sys.argv[1], sys.argv[2])
