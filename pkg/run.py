#!/usr/bin/env python3
"""
Scheibe-Zylinder-Potential – Einstiegspunkt

Verwendung:
    python run.py eval [--two-cylinder] [--g G] [--alpha A] [--theta T] [--option O]
    python run.py sweep-separation [--alpha A] [--grid G1,G2,...] [--out datei.csv]
    python run.py sweep-angle [--g G] [--grid A1,A2,...] [--sin-grid] [--out datei.csv]
    python run.py compare-options [--g G] [--alpha A] [--option O ...]
    python run.py verify [--profile default|strict] [--criterion N ...]

Verfügbare Optionen des Scheibe-Zylinder-Gesetzes:
    A       Entwicklung entlang der bilateralen Normalen (nicht für parallele Achsen)
    B       Entwicklung entlang der projizierten unilateralen Normalen
    C       Entwicklung entlang der unilateralen Normalen
    Csimp   vereinfachte Option C (Standard)

Beispiele:
    python run.py eval --g 0.01
    python run.py eval --two-cylinder --alpha 1.5707963 --g 1e-3 --option B
    python run.py sweep-separation --option Csimp --with-numeric-ref --with-analytic-ref --out parallel.csv
    python run.py sweep-angle --sin-grid --option A --option B --with-analytic-ref --logs logs/
    python run.py verify --criterion 1 --criterion 2

Exit-Codes: 0 Erfolg, 1 Verifikation fehlgeschlagen, 2 Eingabefehler.
"""

import argparse
import os
import sys

from diskcyl.acceptance import verify
from diskcyl.disk_cylinder import OptionTag
from diskcyl.errors import DiskCylError
from diskcyl.scenario import get_settings, get_sweep_grids, get_tolerance_profiles, load_config
from diskcyl.sweep import make_request, sweep_table, compare_options, eval_point, to_csv

ALL_OPTIONS = [tag.value for tag in OptionTag]
SCENARIO_FLAGS = ['m', 'k', 'k12', 'rho1', 'rho2', 'R1', 'R2', 'L', 'g', 'alpha', 'theta']


def parse_grid(text):
    try:
        return [float(value) for value in text.split(',') if value.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'ungültiges Gitter: {text!r}')


def build_settings(args):
    """ Defaults < config file < command-line flags. """
    settings = get_settings()
    if args.config:
        settings = load_config(args.config, settings)
    for key in SCENARIO_FLAGS:
        value = getattr(args, key, None)
        if value is not None:
            settings[key] = value
    if args.option:
        settings['options'] = args.option
    return settings


def status(args, text):
    if not args.quiet:
        print(text, file=sys.stderr)


def next_log_path(log_dir, mode):
    os.makedirs(log_dir, exist_ok=True)
    number = 0
    while os.path.exists(os.path.join(log_dir, f'sweep_{mode}_{number:03d}.txt')):
        number += 1
    return os.path.join(log_dir, f'sweep_{mode}_{number:03d}.txt')


def write_log(log_dir, request, log_lines):
    lines = [f'Sweep {request.mode}: fester Wert {request.fixed_value!r}, {len(request.grid)} Gitterpunkte',
             'Optionen: ' + ', '.join(option.value for option in request.options),
             f'Gesetz: m = {request.law.m}, k = {request.law.k!r} | '
             f'rho1 = {request.materials.rho1!r}, rho2 = {request.materials.rho2!r}',
             f'Szene: R1 = {request.scene.R1!r}, R2 = {request.scene.R2!r}, L = {request.scene.L_slave!r} '
             '(Slave zentriert am bilateralen Nächstpunkt)',
             'ref_analytic: Gesetz paralleler Zylinder bei alpha = 0, '
             'van-der-Waals-Gesetz schiefer Zylinder bei alpha > 0 (nur m = 6)']
    lines += [f'{key} = {request.settings[key]!r}' for key in sorted(request.settings)]
    lines.append('-' * 60)
    lines += log_lines or ['keine Fehler']
    log_path = next_log_path(log_dir, request.mode)
    with open(log_path, 'w', encoding='utf-8') as f:
        f.write('\n'.join(lines) + '\n')
    return log_path


def emit_table(args, table):
    text = to_csv(table)
    if args.out:
        with open(args.out, 'w', encoding='utf-8', newline='') as f:
            f.write(text)
        status(args, f'{len(table)} Zeilen nach {args.out} geschrieben')
    else:
        sys.stdout.write(text)


def run_sweep_command(args, settings, mode):
    grids = get_sweep_grids()
    if mode == 'separation':
        fixed = settings['alpha']
        grid = args.grid or grids['separations']
        sin_abscissa = False
    else:
        fixed = settings['g']
        sin_abscissa = args.sin_grid
        grid = args.grid or (grids['sin_alpha'] if sin_abscissa else grids['angles'])

    request = make_request(settings, mode, fixed, grid, include_analytic=args.with_analytic_ref,
                           include_numeric=args.with_numeric_ref, sin_abscissa=sin_abscissa)
    status(args, f'Sweep {mode} über {len(request.grid)} Punkte, Optionen: '
                 + (', '.join(option.value for option in request.options) or '-') + ' ...')
    log_lines = []
    table = sweep_table(request, progress=not args.quiet, log_lines=log_lines)
    emit_table(args, table)
    if args.logs:
        status(args, f'Log geschrieben: {write_log(args.logs, request, log_lines)}')
    if log_lines:
        status(args, f'{len(log_lines)} Punkte mit Fehlercode (siehe Spalte error_code)')
    return 0


def run_verify(args, settings):
    status(args, f'Verifiziere mit Toleranzprofil {args.profile!r} ...')
    rows = verify(settings, profile=args.profile, criteria=args.criterion, progress=not args.quiet)
    for row in rows:
        print(f'[{row.criterion}] {"PASS" if row.passed else "FAIL"}  {row.describe()}')

    failed = sorted({row.criterion for row in rows if not row.passed})
    passed = sorted({row.criterion for row in rows} - set(failed))
    print(f'\nErgebnis: {len(passed)} Kriterien bestanden, {len(failed)} fehlgeschlagen'
          + (f' ({", ".join(str(number) for number in failed)})' if failed else ''))
    return 1 if failed else 0


def add_common_flags(parser):
    parser.add_argument('--m', type=int, default=None, help='Exponent des Punktpaar-Gesetzes (>= 6)')
    parser.add_argument('--k', type=float, default=None, help='Vorfaktor k_m (negativ = anziehend)')
    parser.add_argument('--k12', type=float, default=None, help='zusätzlicher abstoßender Term k_12')
    parser.add_argument('--rho1', type=float, default=None)
    parser.add_argument('--rho2', type=float, default=None)
    parser.add_argument('--R1', type=float, default=None, help='Radius Slave / Scheibe')
    parser.add_argument('--R2', type=float, default=None, help='Radius Master-Zylinder')
    parser.add_argument('--L', type=float, default=None, help='Länge des Slave-Zylinders')
    parser.add_argument('--option', action='append', choices=ALL_OPTIONS, default=None,
                        help='Option des Scheibe-Zylinder-Gesetzes (mehrfach möglich)')
    parser.add_argument('--with-numeric-ref', action='store_true', help='3D-Referenzlösung berechnen')
    parser.add_argument('--with-analytic-ref', action='store_true', help='analytische Referenz berechnen')
    parser.add_argument('--config', default=None, metavar='DATEI', help='Konfigurationsdatei (key = value)')
    parser.add_argument('--out', default=None, metavar='PFAD', help='CSV-Ausgabedatei (Standard: stdout)')
    parser.add_argument('--logs', default=None, metavar='VERZEICHNIS', help='Verzeichnis für Sweep-Logs')
    parser.add_argument('--quiet', action='store_true', help='keine Status- und Fortschrittsausgabe')


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    add_common_flags(common)

    parser = argparse.ArgumentParser(
        description='Scheibe-Zylinder-Wechselwirkungspotentiale',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='Verfügbare Optionen: ' + ', '.join(ALL_OPTIONS)
    )
    commands = parser.add_subparsers(dest='command', required=True)

    p_eval = commands.add_parser('eval', parents=[common], help='einzelne Konfiguration auswerten')
    p_eval.add_argument('--two-cylinder', action='store_true', help='Gesamtpotential zweier Zylinder')
    p_eval.add_argument('--total', action='store_true', help='über alle Terme summieren (mit --k12)')
    p_eval.add_argument('--g', type=float, default=None, help='Oberflächenabstand relativ zu R1')
    p_eval.add_argument('--alpha', type=float, default=None, help='Winkel zwischen den Achsen [rad]')
    p_eval.add_argument('--theta', type=float, default=None, help='Winkel Scheibennormale / unilaterale Normale')

    p_sep = commands.add_parser('sweep-separation', parents=[common], help='Sweep über g/R bei festem alpha')
    p_sep.add_argument('--alpha', type=float, default=None)
    p_sep.add_argument('--grid', type=parse_grid, default=None, metavar='G1,G2,...')

    p_ang = commands.add_parser('sweep-angle', parents=[common], help='Sweep über alpha bei festem g/R')
    p_ang.add_argument('--g', type=float, default=None)
    p_ang.add_argument('--grid', type=parse_grid, default=None, metavar='A1,A2,...')
    p_ang.add_argument('--sin-grid', action='store_true', help='Gitter in sin(alpha) statt alpha')

    p_cmp = commands.add_parser('compare-options', parents=[common], help='alle Optionen an einer Szene')
    p_cmp.add_argument('--g', type=float, default=None)
    p_cmp.add_argument('--alpha', type=float, default=None)

    p_ver = commands.add_parser('verify', parents=[common], help='Akzeptanzkriterien prüfen')
    p_ver.add_argument('--profile', default='default', choices=sorted(get_tolerance_profiles()))
    p_ver.add_argument('--criterion', type=int, action='append', default=None, metavar='N')
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        settings = build_settings(args)
        if args.command == 'eval':
            value = eval_point(settings, two_cylinder=args.two_cylinder, all_laws=args.total)
            print(f'{value:.11e}')
            return 0
        if args.command == 'sweep-separation':
            return run_sweep_command(args, settings, 'separation')
        if args.command == 'sweep-angle':
            return run_sweep_command(args, settings, 'angle')
        if args.command == 'compare-options':
            if not args.option:
                settings['options'] = ALL_OPTIONS
            emit_table(args, compare_options(settings, include_numeric=args.with_numeric_ref))
            return 0
        return run_verify(args, settings)
    except DiskCylError as error:
        print(f'Fehler [{error.code}]: {error}', file=sys.stderr)
        return 2
    except OSError as error:
        print(f'Fehler beim Schreiben: {error}', file=sys.stderr)
        return 2


if __name__ == '__main__':
    sys.exit(main())
