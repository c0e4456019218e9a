import logging

import click

from src.config import get_config

logger = logging.getLogger(__name__)

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']


def create_cli():
    settings = get_config()

    @click.group(context_settings={'help_option_names': ['-h', '--help']})
    @click.option('--log-level', type=click.Choice(LOG_LEVELS, case_sensitive=False),
                  default=settings.LOG_LEVEL.upper(), show_default=True)
    def cli(log_level):
        """Symplectic volumes of spherical and Euclidean polygon moduli spaces."""
        # Configure logging; stderr only, stdout carries JSON/CSV
        logging.basicConfig(level=log_level.upper(),
                            format='%(levelname)s %(name)s: %(message)s',
                            force=True)

    # Register commands
    from src.commands.feasible import feasible_command
    from src.commands.maximize import maximize_command
    from src.commands.sweep import sweep_command
    from src.commands.volume import volume_command

    commands_registered = []
    for command in (volume_command, feasible_command, maximize_command, sweep_command):
        cli.add_command(command)
        commands_registered.append(command.name)
    logger.debug(f'CLI created with commands {commands_registered}')

    return cli


# Create the CLI
cli = create_cli()

if __name__ == '__main__':
    cli(prog_name='polyvol')
