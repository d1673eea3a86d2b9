# -*- coding: utf-8 -*-

from __future__ import absolute_import
from __future__ import print_function
from __future__ import division

import csv
import json
import os
import os.path as osp
import sys

import numpy as np
import torch


def to_tensor(array, dtype=torch.float64):
    if torch.is_tensor(array):
        return array.to(dtype=dtype)
    return torch.tensor(np.asarray(array), dtype=dtype)


def rel_change(prev_val, curr_val):
    return (prev_val - curr_val) / max([np.abs(prev_val), np.abs(curr_val), 1])


def format_float(value):
    ''' 17 significant digits, locale independent '''
    return '{:.17g}'.format(float(value))


def format_cell(value):
    if isinstance(value, (bool, np.bool_)):
        return 'true' if value else 'false'
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return format_float(value)
    return str(value)


def ensure_folder(path):
    folder = osp.dirname(osp.abspath(path))
    if not osp.exists(folder):
        os.makedirs(folder)
    return path


def _write_rows(stream, header, rows):
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_cell(val) for val in row])


def write_csv(path, header, rows):
    ''' Writes rows under a mandatory header; path None means stdout '''
    if path is None:
        _write_rows(sys.stdout, header, rows)
        return
    ensure_folder(path)
    with open(path, 'w', newline='') as csv_file:
        _write_rows(csv_file, header, rows)


def to_serializable(obj):
    if hasattr(obj, 'to_dict'):
        return to_serializable(obj.to_dict())
    if isinstance(obj, dict):
        return {str(key): to_serializable(val) for key, val in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_serializable(val) for val in obj]
    if isinstance(obj, np.ndarray):
        return to_serializable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj)
    return obj


def dumps_json(obj):
    return json.dumps(to_serializable(obj), indent=2, sort_keys=True)


def dump_json(path, obj):
    ensure_folder(path)
    with open(path, 'w') as json_file:
        json_file.write(dumps_json(obj))
        json_file.write('\n')
